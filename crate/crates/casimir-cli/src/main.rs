fn main() {
    std::process::exit(casimir_cli::run());
}
