fn main() {
    std::process::exit(latwalk::cli::run(std::env::args_os()));
}
