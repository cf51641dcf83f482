fn main() {
    std::process::exit(bupoly::cli::run());
}
