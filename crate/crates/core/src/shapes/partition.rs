use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

pub(crate) fn check_multipartition(lambda: &[Vec<usize>]) -> Result<()> {
    if lambda.is_empty() {
        return Err(Error::NotAPartition("an l-partition needs l >= 1 parts".into()));
    }
    for (beta, part) in lambda.iter().enumerate() {
        if part.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!(
                "component {beta} = {part:?} is not weakly decreasing"
            )));
        }
    }
    Ok(())
}

/// `n! / Π h_b` over all boxes of all components of an ℓ-partition.
pub fn hook_dimension(lambda: &[Vec<usize>]) -> Result<BigUint> {
    check_multipartition(lambda)?;
    let n: usize = lambda.iter().flatten().sum();
    if n == 0 {
        return Err(Error::EmptyShape);
    }
    let mut num = BigUint::one();
    for k in 2..=n {
        num *= k;
    }
    let mut den = BigUint::one();
    for part in lambda {
        let rows: Vec<usize> = part.iter().copied().filter(|&r| r > 0).collect();
        for (i, &len) in rows.iter().enumerate() {
            for j in 0..len {
                let arm = len - j - 1;
                let leg = rows[i + 1..].iter().filter(|&&r| r > j).count();
                den *= arm + leg + 1;
            }
        }
    }
    debug_assert!((&num % &den) == BigUint::from(0u32));
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(hook_dimension(&[vec![2, 1]]).unwrap(), BigUint::from(2u32));
        for n in 1..8 {
            assert_eq!(hook_dimension(&[vec![n]]).unwrap(), BigUint::from(1u32));
        }
        assert_eq!(hook_dimension(&[vec![2], vec![1]]).unwrap(), BigUint::from(3u32));
        assert_eq!(hook_dimension(&[vec![3, 2]]).unwrap(), BigUint::from(5u32));
        assert!(matches!(hook_dimension(&[vec![1, 2]]), Err(Error::NotAPartition(_))));
    }
}
