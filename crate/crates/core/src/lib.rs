pub mod error;
pub mod lie;
pub mod partitions;
pub mod reproduce;
pub mod ratlin;
pub mod seaweed;
pub mod strange;

pub use error::{Error, Result};
