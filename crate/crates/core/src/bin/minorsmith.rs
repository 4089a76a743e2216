fn main() {
    std::process::exit(minorsmith::cli::run(std::env::args_os()));
}
