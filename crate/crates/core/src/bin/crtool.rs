fn main() -> std::process::ExitCode {
    rigidity_cr::cli::main_with_args(std::env::args_os())
}
