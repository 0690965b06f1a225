//! Lengths, reduced words, Bruhat order and Demazure products in S_4.

use korbits::coxeter::{
    all_reduced_words, bruhat_leq, demazure_product, reduced_word, WeylElement,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WeylElement::from_one_line(vec![3, 1, 4, 2])?;
    let v = WeylElement::from_one_line(vec![2, 1, 4, 3])?;
    println!(
        "w = {w}, length {}, reduced word {}",
        w.length(),
        reduced_word(&w)
    );
    println!("all reduced words of w:");
    for word in all_reduced_words(&w) {
        println!("  {word}");
    }
    println!("v = {v}, v <= w in Bruhat order: {}", bruhat_leq(&v, &w)?);
    let d = demazure_product(&w, &v)?;
    println!("Demazure product w * v = {d} (length {})", d.length());

    let word: korbits::coxeter::Word = "1,1,2,1".parse()?;
    println!(
        "word {word}: product {}, Demazure product {}",
        word.product(4),
        word.demazure_product(4)
    );
    Ok(())
}
