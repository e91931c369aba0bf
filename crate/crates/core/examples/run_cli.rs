//! Drive the command line in process, the same way the binary does.

fn main() {
    let args = ["fracwave", "extrema", "--nu", "0.6,0.75,0.9", "--format", "csv"];
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = fracwave::cli::run(args, &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    eprint!("{}", String::from_utf8_lossy(&err));

    let bad = ["fracwave", "eval", "--nu", "1.2"];
    let mut sink = Vec::new();
    let mut msg = Vec::new();
    let bad_code = fracwave::cli::run(bad, &mut sink, &mut msg);
    eprintln!("exit {code}; rejected order gives exit {bad_code}: {}", String::from_utf8_lossy(&msg).trim());
}
