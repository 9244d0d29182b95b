fn main() -> std::process::ExitCode {
    cuspcubes::cli::run()
}
