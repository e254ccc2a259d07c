fn main() {
    std::process::exit(minps_cli::run(std::env::args_os()));
}
