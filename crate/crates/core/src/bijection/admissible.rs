use std::ops::ControlFlow;

use serde::Serialize;

use super::{Analyzer, EdgeBijection};
use crate::error::{Error, Result};
use crate::poset::{for_each_closed_semiwalk, Semiwalk};

/// The four counts `s^+, s^-, t^+, t^-` of a bijection along a closed semiwalk at a point.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CountStats {
    pub s_plus: usize,
    pub s_minus: usize,
    pub t_plus: usize,
    pub t_minus: usize,
}

impl CountStats {
    /// `s^+ - s^- = t^+ - t^-`.
    pub fn balanced(&self) -> bool {
        self.s_plus as i64 - self.s_minus as i64 == self.t_plus as i64 - self.t_minus as i64
    }

    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (self.s_plus, self.s_minus, self.t_plus, self.t_minus)
    }
}

impl Analyzer<'_> {
    /// Counts computed directly from the definitions by searching for witnesses `w`.
    pub fn count_stats(&self, theta: &EdgeBijection, walk: &Semiwalk, z: usize) -> CountStats {
        self.check_size(theta);
        let p = self.poset;
        let n = p.len();
        let mut stats = CountStats::default();
        for step in walk.vertices().windows(2) {
            let (a, b) = (step[0], step[1]);
            let up = p.lt(a, b);
            let edge = if up { (a, b) } else { (b, a) };
            let from_z = (0..n).any(|w| p.lt(z, w) && self.img(theta, z, w) == edge);
            let to_z = (0..n).any(|w| p.lt(w, z) && self.img(theta, w, z) == edge);
            match (up, from_z, to_z) {
                (_, false, false) => {}
                (true, s, t) => {
                    stats.s_plus += s as usize;
                    stats.t_plus += t as usize;
                }
                (false, s, t) => {
                    stats.s_minus += s as usize;
                    stats.t_minus += t as usize;
                }
            }
        }
        stats
    }

    /// Whether `s^+ - s^- = t^+ - t^-` holds at every point of every weak crown.
    pub fn is_admissible(&self, theta: &EdgeBijection) -> Result<bool> {
        self.check_size(theta);
        self.require_m(theta)?;
        Ok(self.admissible_unchecked(&theta.inverse()))
    }

    pub(crate) fn admissible_unchecked(&self, theta_inv: &EdgeBijection) -> bool {
        let mut balance = vec![0i64; self.poset.len()];
        self.crown_walks
            .iter()
            .all(|walk| self.walk_balanced(theta_inv, walk, &mut balance))
    }

    /// The same identity checked over every closed semiwalk of at most `max_steps` steps.
    pub fn is_admissible_oracle(&self, theta: &EdgeBijection, max_steps: usize) -> Result<bool> {
        self.check_size(theta);
        self.require_m(theta)?;
        if max_steps < 2 {
            return Err(Error::Precondition(format!(
                "closed semiwalks need at least 2 steps, got bound {max_steps}"
            )));
        }
        let theta_inv = theta.inverse();
        let mut balance = vec![0i64; self.poset.len()];
        let flow = for_each_closed_semiwalk(self.poset, max_steps, |walk| {
            if self.walk_balanced(&theta_inv, walk, &mut balance) {
                ControlFlow::Continue(())
            } else {
                ControlFlow::Break(())
            }
        });
        Ok(flow.is_continue())
    }

    /// Accumulates `(s^+ - s^-) - (t^+ - t^-)` for every point at once: an
    /// up-step over an edge with preimage `e_ab` adds one at `a` and removes
    /// one at `b`, a down-step does the opposite.
    fn walk_balanced(
        &self,
        theta_inv: &EdgeBijection,
        walk: &[usize],
        balance: &mut [i64],
    ) -> bool {
        let p = self.poset;
        balance.iter_mut().for_each(|d| *d = 0);
        for step in walk.windows(2) {
            let (a, b) = (step[0], step[1]);
            let (edge, sign) = if p.lt(a, b) {
                ((a, b), 1)
            } else {
                ((b, a), -1)
            };
            let (x, y) = theta_inv.image_pair(p, edge);
            balance[x] += sign;
            balance[y] -= sign;
        }
        balance.iter().all(|&d| d == 0)
    }
}
