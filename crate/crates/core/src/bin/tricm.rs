fn main() {
    std::process::exit(tricm::cli::main());
}
