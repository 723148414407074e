//! The full chain for t = 2/5 with (k1,k2,k3) = (1,2,0) and the identity permutation.
//!
//! ```text
//! cargo run --example worked_example
//! ```

use markov_words::cohnwords::christoffel;
use markov_words::fenceposet::{cf_numden, n_of};
use markov_words::gmtree::{characteristic, gm_vertex, GmParams, Sigma};
use markov_words::matrix2::{gc_recursive, monodromy, monodromy_completed};
use markov_words::rational::{farey_path, ExtRational};
use markov_words::signseq::{gm_sequence, strongly_admissible};
use markov_words::words::{omega_completed, omega_geometric, CompletionMode};

fn main() -> markov_words::Result<()> {
    let t: ExtRational = "2/5".parse()?;
    let params = GmParams::new([1, 2, 0], Sigma::IDENTITY);

    println!("t = {t}, {params}");
    println!("farey path       {}", farey_path(t)?);
    println!("omega            {}", omega_geometric(t));
    println!("completed omega  {}", omega_completed(t, CompletionMode::Geometric)?);

    let v = gm_vertex(t, &params)?;
    println!("GM vertex        {v}");
    println!("u_t              {}", characteristic(t, &params)?);

    let s0 = gm_sequence(t, &params)?;
    let (num, den) = cf_numden(&s0.runs)?;
    println!("GM sequence      {s0}  (N = {}, cf = {num}/{den})", n_of(&s0.runs)?);
    println!("strongly adm.    {}", strongly_admissible(t, &params)?);

    println!("M_t              {}", monodromy(t, &params)?);
    println!("M-bar_t          {}", monodromy_completed(t, &params)?);
    println!("C_t              {}", gc_recursive(t, &params)?);

    println!("c_2/5            {}", christoffel(t));
    println!("c_5/2            {}", christoffel("5/2".parse()?));
    Ok(())
}
