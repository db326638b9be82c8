fn main() {
    std::process::exit(c4book::cli::run(std::env::args_os()));
}
