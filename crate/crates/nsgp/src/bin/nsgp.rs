fn main() {
    std::process::exit(nsgp::cli::run());
}
