fn main() {
    std::process::exit(nomizu::cli::main());
}
