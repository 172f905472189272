fn main() {
    std::process::exit(arbor::cli::run(std::env::args_os()));
}
