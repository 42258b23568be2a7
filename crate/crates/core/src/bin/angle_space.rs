fn main() {
    std::process::exit(angle_space::cli::run());
}
