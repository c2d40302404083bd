fn main() {
    std::process::exit(softqual::cli::main_with(std::env::args_os()));
}
