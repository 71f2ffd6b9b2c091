//! Drives the command-line front end in-process on a bundled system file.

fn main() {
    let file = concat!(env!("CARGO_MANIFEST_DIR"), "/data/symmetric_quartic.sys");
    let args = ["lur", file, "--s", "1/200,1/15", "--real-only", "--format", "text"];
    let code = lur::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
