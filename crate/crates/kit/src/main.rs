fn main() {
    std::process::exit(snarkkit::cli::main_with_args(std::env::args_os()));
}
