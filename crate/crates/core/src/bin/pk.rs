fn main() {
    std::process::exit(periodkit::cli::run(std::env::args_os()));
}
