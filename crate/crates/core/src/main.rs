fn main() {
    let code = hss_stab::cli::run(std::env::args_os());
    std::process::exit(code);
}
