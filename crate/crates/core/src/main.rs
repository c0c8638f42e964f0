fn main() {
    std::process::exit(spdual::cli::run(std::env::args_os()));
}
