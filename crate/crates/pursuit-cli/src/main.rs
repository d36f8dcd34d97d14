fn main() {
    std::process::exit(pursuit_cli::run());
}
