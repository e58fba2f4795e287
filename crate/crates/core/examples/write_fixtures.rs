//! Writes sample complexes and permutations for the command-line tool.
//!
//! `cargo run -p sturmkit --example write_fixtures -- data`

use std::path::PathBuf;

use sturmkit::complex::{
    chafee_infante_ball, disk, mirror_ball, octahedron_template, weld, ComplexFile,
};
use sturmkit::pairs::{sigma_from_pair, szs_pair};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "data".into()));
    std::fs::create_dir_all(&dir)?;
    let save = |name: &str, file: ComplexFile| -> Result<(), Box<dyn std::error::Error>> {
        std::fs::write(dir.join(name), serde_json::to_string_pretty(&file)? + "\n")?;
        Ok(())
    };

    let oct = octahedron_template();
    save(
        "octahedron.json",
        ComplexFile::from_parts(&oct.complex, Some(&oct.decoration)),
    )?;
    for (plus, tag) in [(true, "plus"), (false, "minus")] {
        let t = mirror_ball(plus);
        save(
            &format!("mirror_{tag}.json"),
            ComplexFile::from_parts(&t.complex, Some(&t.decoration)),
        )?;
        let sigma = sigma_from_pair(&szs_pair(&t)?)?;
        std::fs::write(dir.join(format!("sigma_{tag}.txt")), format!("{sigma}\n"))?;
    }
    let (ci, d) = chafee_infante_ball(3)?;
    save(
        "chafee_infante_3.json",
        ComplexFile::from_parts(&ci, d.as_ref()),
    )?;
    let (d23, _) = disk(2, 3)?;
    save("disk_2_3.json", ComplexFile::from_parts(&d23, None))?;
    let w = weld(&disk(1, 2)?.0, &disk(2, 1)?.0)?;
    save(
        "weld_1_2.json",
        ComplexFile::from_parts(&w.complex, Some(&w.decoration)),
    )?;

    let sigma = sigma_from_pair(&szs_pair(&oct)?)?;
    std::fs::write(
        dir.join("sigma_oct.txt"),
        format!("n={}\n{}\n", sigma.len(), sigma.to_cycle_string()),
    )?;
    std::fs::write(dir.join("not_dissipative.txt"), "2 1 3\n")?;
    Ok(())
}
