fn main() {
    std::process::exit(unital_cli::run(std::env::args_os()));
}
