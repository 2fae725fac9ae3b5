// SPDX-License-Identifier: Apache-2.0

pub mod bisoft;
pub mod bitopology;
pub mod cli;
pub mod error;
pub mod fixture;
pub mod rough;
pub mod separation;
pub mod softset;
pub mod topology;
pub mod search;
