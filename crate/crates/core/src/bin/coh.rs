use clap::Parser;

fn main() {
    let cli = coh::cli::Cli::parse();
    let code = coh::cli::run(&cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
