fn main() {
    std::process::exit(superlie::cli::run(std::env::args_os()));
}
