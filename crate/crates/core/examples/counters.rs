//! Counting standard monomials two ways and the colon/sum splitting
//! `dim R/I = dim R/(I : x_i^r) + dim R/<I, x_i^r>`.

use gparking::MonomialIdeal;

fn main() -> gparking::Result<()> {
    let i: MonomialIdeal = "x1^3\nx2^4\nx3^2\nx1*x2^2\nx2*x3".parse()?;
    println!("I = {i}");
    let (enumerated, recursive) = (i.std_count_enum()?, i.std_count_recursive()?);
    println!("enumerated {enumerated}, recursive {recursive}");
    for (var, r) in [(0, 1), (1, 2), (2, 1)] {
        let colon = i.colon_pure_power(var, r)?;
        let sum = i.add_pure_power(var, r)?;
        println!(
            "x{}^{r}: {} + {} (I : x^r = {colon}, <I, x^r> = {sum})",
            var + 1,
            colon.std_count_recursive()?,
            sum.std_count_recursive()?,
        );
    }
    Ok(())
}
