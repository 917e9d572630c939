fn main() {
    std::process::exit(kahlerkit::cli::run(std::env::args_os()));
}
