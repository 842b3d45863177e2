fn main() {
    std::process::exit(coulomb5::cli::run(std::env::args_os()));
}
