fn main() {
    std::process::exit(korbits::cli::main_with_args(std::env::args_os()));
}
