fn main() {
    std::process::exit(rootsub::cli::main_with_args(std::env::args_os()));
}
