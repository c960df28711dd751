//! Driving the command-line front end in-process.
fn main() {
    for args in [&["relation", "A", "1", "Z"][..], &["group", "--format", "json"][..]] {
        let (code, out, _) = qheine::cli::run_to_string(args);
        println!("$ qheine {} -> exit {code}\n{out}", args.join(" "));
    }
}
