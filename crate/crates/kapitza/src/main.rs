fn main() {
    std::process::exit(kapitza::cli::run(std::env::args_os()));
}
