fn main() {
    std::process::exit(discrete_uncertainty::cli::run(std::env::args_os()));
}
