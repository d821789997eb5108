use std::io::{stderr, stdout};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = emgeo::cli::run(&args, &mut stdout(), &mut stderr());
    std::process::exit(code);
}
