//! The two biased coin games and their random mixture.
//!
//! Game A flips a single coin that wins with probability `0.5 - epsilon`.
//! Game B picks its coin by looking at the player's capital: when the capital
//! is divisible by the modulus it flips a bad coin (`0.10 - epsilon`),
//! otherwise a good one (`0.75 - epsilon`). Each game on its own drifts
//! downward for any positive `epsilon`; choosing between them uniformly at
//! random each round drifts upward. [`crate::markov`] computes the exact
//! drifts; [`simulate_games`] estimates them by Monte Carlo.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stats;
use crate::stream::StreamKey;

/// Largest admissible bias; keeps every coin probability positive.
pub const MAX_EPSILON: f64 = 0.1;

/// Which game a round belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Game {
    A,
    B,
    Combined,
}

impl Game {
    pub const ALL: [Game; 3] = [Game::A, Game::B, Game::Combined];

    pub fn token(self) -> &'static str {
        match self {
            Game::A => "a",
            Game::B => "b",
            Game::Combined => "combined",
        }
    }
}

impl std::fmt::Display for Game {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// Coin biases and mixture weight for one parameterization.
///
/// Constructed through [`GameParams::new`] or [`GameParams::with_mix`], which
/// derive the three coin probabilities from `epsilon` and check that they are
/// valid probabilities in the expected order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GameParams {
    pub epsilon: f64,
    /// Game A's single coin: wins with probability `0.5 - epsilon`.
    pub coin_a_win: f64,
    /// Game B's coin when the capital is divisible by the modulus.
    pub coin_b_bad_win: f64,
    /// Game B's coin for every other capital.
    pub coin_b_good_win: f64,
    pub modulus: u32,
    /// Probability of picking game A in the combined game.
    pub mix_prob: f64,
}

impl GameParams {
    /// Standard parameterization with a fair 50/50 mixture.
    pub fn new(epsilon: f64) -> Result<Self> {
        Self::with_mix(epsilon, 0.5)
    }

    pub fn with_mix(epsilon: f64, mix_prob: f64) -> Result<Self> {
        if !epsilon.is_finite() || !(0.0..MAX_EPSILON).contains(&epsilon) {
            return Err(Error::InvalidParameter(format!(
                "epsilon must lie in [0, {MAX_EPSILON}), got {epsilon}"
            )));
        }
        if !mix_prob.is_finite() || !(0.0..=1.0).contains(&mix_prob) {
            return Err(Error::InvalidParameter(format!(
                "mix_prob must lie in [0, 1], got {mix_prob}"
            )));
        }
        let params = GameParams {
            epsilon,
            coin_a_win: 0.5 - epsilon,
            coin_b_bad_win: 0.10 - epsilon,
            coin_b_good_win: 0.75 - epsilon,
            modulus: 3,
            mix_prob,
        };
        debug_assert!(params.coin_b_bad_win < params.coin_a_win);
        debug_assert!(params.coin_a_win < params.coin_b_good_win);
        Ok(params)
    }

    /// Effective win probability of `game` in capital-residue state `residue`.
    pub fn win_prob(&self, game: Game, residue: u32) -> f64 {
        match game {
            Game::A => self.coin_a_win,
            Game::B => {
                if residue == 0 {
                    self.coin_b_bad_win
                } else {
                    self.coin_b_good_win
                }
            }
            Game::Combined => {
                self.mix_prob * self.win_prob(Game::A, residue)
                    + (1.0 - self.mix_prob) * self.win_prob(Game::B, residue)
            }
        }
    }

    /// Mathematical residue of a possibly negative capital, so -3 counts as
    /// divisible by 3.
    pub fn residue(&self, capital: i64) -> u32 {
        capital.rem_euclid(self.modulus as i64) as u32
    }

    /// One round of game A. `draw` is a unit-uniform variate.
    pub fn play_a(&self, state: GameState, draw: f64) -> GameState {
        state.step(draw < self.coin_a_win)
    }

    /// One round of game B; the coin depends on the current capital.
    pub fn play_b(&self, state: GameState, draw: f64) -> GameState {
        let w = self.win_prob(Game::B, self.residue(state.capital));
        state.step(draw < w)
    }

    /// One round of the combined game. Consumes exactly two draws: the game
    /// choice first, then the coin flip, so streams stay aligned with the
    /// pure games when `mix_prob` is 0 or 1.
    pub fn play_combined(&self, state: GameState, game_draw: f64, coin_draw: f64) -> GameState {
        if game_draw < self.mix_prob {
            self.play_a(state, coin_draw)
        } else {
            self.play_b(state, coin_draw)
        }
    }
}

/// Player capital and round count, in units of one coin-flip stake.
///
/// Play starts at capital 0, which is divisible by the modulus, so game B
/// opens with the unfavorable coin.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GameState {
    pub capital: i64,
    pub rounds_played: u64,
}

impl GameState {
    pub fn new() -> Self {
        Self::default()
    }

    fn step(mut self, win: bool) -> Self {
        self.capital += if win { 1 } else { -1 };
        self.rounds_played += 1;
        self
    }
}

/// Monte Carlo drift estimate across independent repetitions.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DriftEstimate {
    /// Mean of capital / rounds over the repetitions.
    pub mean_drift: f64,
    pub std_error: f64,
    pub rounds: u64,
    pub reps: u64,
}

/// Plays `game` for `rounds` rounds, repeated `reps` times on independent
/// substreams of `seed`, and reports the mean drift per round.
///
/// Repetitions run in parallel; results are aggregated in repetition order,
/// so the estimate is identical no matter how many threads execute it.
pub fn simulate_games(
    params: &GameParams,
    game: Game,
    rounds: u64,
    reps: u64,
    seed: u64,
) -> Result<DriftEstimate> {
    if rounds == 0 {
        return Err(Error::InvalidParameter("rounds must be at least 1".into()));
    }
    if reps == 0 {
        return Err(Error::InvalidParameter("reps must be at least 1".into()));
    }
    let key = StreamKey::root(seed).child("games").child(game.token());
    let drifts: Vec<f64> = (0..reps)
        .into_par_iter()
        .map(|rep| {
            let mut rng = key.child_index(rep).rng();
            let mut state = GameState::new();
            match game {
                Game::A => {
                    for _ in 0..rounds {
                        state = params.play_a(state, rng.random());
                    }
                }
                Game::B => {
                    for _ in 0..rounds {
                        state = params.play_b(state, rng.random());
                    }
                }
                Game::Combined => {
                    for _ in 0..rounds {
                        let game_draw = rng.random();
                        let coin_draw = rng.random();
                        state = params.play_combined(state, game_draw, coin_draw);
                    }
                }
            }
            state.capital as f64 / rounds as f64
        })
        .collect();
    let (mean_drift, std_error) = stats::mean_and_standard_error(&drifts);
    Ok(DriftEstimate {
        mean_drift,
        std_error,
        rounds,
        reps,
    })
}
