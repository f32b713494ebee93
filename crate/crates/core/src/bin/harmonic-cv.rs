fn main() {
    std::process::exit(harmonic_cv::cli::main_with_args(std::env::args_os()));
}
