// Character table of S_4, first from memory, then through an on-disk cache.

use qhurwitz::characters::{char_table, CacheStatus, CharacterCache};
use qhurwitz::partition::Partition;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let table = char_table(4)?;
    print!("{:>10}", "");
    for mu in &table.classes {
        print!("{:>10}", mu.to_string());
    }
    println!();
    for (lambda, row) in table.irreps.iter().zip(&table.chi) {
        print!("{:>10}", lambda.to_string());
        for x in row {
            print!("{x:>10}");
        }
        println!();
    }

    let lambda = Partition::new(vec![2, 2])?;
    let mu = Partition::new(vec![2, 2])?;
    println!("central character of {lambda} at {mu}: {}", table.central_character(&lambda, &mu));

    let dir = std::env::temp_dir().join(format!("qhurwitz-example-{}", std::process::id()));
    let cache = CharacterCache::new(&dir);
    let (_, first) = cache.get(6)?;
    let (_, second) = cache.get(6)?;
    assert_eq!((first, second), (CacheStatus::Miss, CacheStatus::Hit));
    println!("cached: {:?}", cache.list());
    cache.clear()?;
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
