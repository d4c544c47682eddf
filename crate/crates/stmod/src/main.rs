fn main() {
    std::process::exit(stmod::cli::main_with_args(std::env::args()));
}
