// The same table through the command-line renderer in all three formats.

use qhurwitz::cli::render;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for format in ["json", "csv", "latex"] {
        let args: Vec<String> = ["fd", "--n", "2", "--dmax", "1", "--family", "hl", "--mode", "t=1/2", "--format", format]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let bytes = render(&args)?;
        println!("--- {format} ---\n{}", String::from_utf8(bytes)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
