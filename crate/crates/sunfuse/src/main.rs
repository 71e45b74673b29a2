fn main() {
    std::process::exit(sunfuse::cli::run());
}
