fn main() {
    std::process::exit(rii::cli::run(std::env::args_os()));
}
