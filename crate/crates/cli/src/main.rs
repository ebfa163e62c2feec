fn main() {
    std::process::exit(curvezeta_cli::run(std::env::args_os()));
}
