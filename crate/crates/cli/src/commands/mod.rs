pub mod bounds;
pub mod classify;
pub mod corpus;
pub mod gersh;
pub mod lift;
pub mod recheck;
pub mod verify;
