fn main() -> std::process::ExitCode {
    outerspace::cli::main()
}
