fn main() {
    std::process::exit(polylaw::cli::main_with_args(std::env::args_os()));
}
