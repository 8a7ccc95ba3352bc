fn main() -> std::process::ExitCode {
    sharpnorm_lab::cli::main()
}
