fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(immanant_lab::cli::run(&args));
}
