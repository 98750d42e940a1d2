fn main() {
    lforge::cli::configure_threads();
    std::process::exit(lforge::cli::run(std::env::args_os()));
}
