//! p-adic expansions of rationals, the norm, and the additive character.
//!
//!     cargo run --example padic_arithmetic -- 7 -3/14

use parton::padic::PadicNumber;

fn main() -> parton::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p: u64 = args.first().map(|s| s.parse().expect("prime")).unwrap_or(5);
    let (num, den) = match args.get(1) {
        Some(t) => {
            let (a, b) = t.split_once('/').unwrap_or((t, "1"));
            (a.parse().expect("numerator"), b.parse().expect("denominator"))
        }
        None => (-7i64, 50i64),
    };

    let x = PadicNumber::from_fraction(num, den, p, 20)?;
    println!("{num}/{den} in Q_{p}");
    println!("  expansion        {}", x.format());
    println!("  valuation        {:?}", x.valuation());
    println!("  |x|_p            {}", x.norm());
    println!("  frac(x)          {}", x.fractional_part()?);
    println!("  e^(2 pi i frac)  {:.12}", x.additive_character()?);

    let y = PadicNumber::from_fraction(1, p as i64, p, 20)?;
    let s = x.add(&y)?;
    println!("\nx + 1/{p}          {}", s.format());
    println!("  |x + y| = {} <= max(|x|, |y|) = {}", s.norm(), x.norm().max(y.norm()));

    if !x.is_zero() {
        let inv = x.inv()?;
        println!("\n1/x               {}", inv.format());
        println!("x * (1/x)         {}", x.mul(&inv)?.format());
    }
    Ok(())
}
