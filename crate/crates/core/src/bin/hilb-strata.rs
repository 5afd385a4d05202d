fn main() {
    std::process::exit(hilb_strata::cli::main_with_args(std::env::args_os()));
}
