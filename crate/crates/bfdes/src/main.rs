fn main() {
    std::process::exit(bfdes::cli::main());
}
