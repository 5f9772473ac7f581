fn main() {
    std::process::exit(quadideal::cli::main_from_env());
}
