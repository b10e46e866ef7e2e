fn main() {
    let (code, out) = idealis::cli::run(std::env::args_os());
    println!("{out}");
    std::process::exit(code);
}
