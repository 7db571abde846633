fn main() {
    std::process::exit(softtop::cli::run(std::env::args_os()));
}
