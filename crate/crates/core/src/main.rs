fn main() {
    std::process::exit(fmethod::cli::run_from(std::env::args_os()));
}
