fn main() {
    std::process::exit(qtop::cli::run());
}
