fn main() {
    std::process::exit(rainbow_core::cli::run(std::env::args_os()));
}
