fn main() {
    std::process::exit(latcon::cli::main());
}
