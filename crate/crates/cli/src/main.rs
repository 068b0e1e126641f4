use std::io::{self, Write};

fn main() {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let code = wedderburn_cli::main_with(std::env::args().collect(), &mut input, &mut out, &mut err);
    let _ = out.flush();
    std::process::exit(code);
}
