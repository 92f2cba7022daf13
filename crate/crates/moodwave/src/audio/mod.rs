//! Audio decoding, synthesis, and dataset manifests.
//!
//! Everything downstream assumes mono clips at a single canonical rate
//! ([`PIPELINE_SAMPLE_RATE`]); [`load_wav`] + [`resample`] + [`fix_duration`]
//! get arbitrary PCM WAV input into that shape.

mod manifest;
mod resample;
mod synth;
mod wav;

pub use manifest::{load_manifest, write_manifest, Manifest, ManifestEntry, SplitHint};
pub use resample::resample;
pub use synth::{synth_signal, SynthKind};
pub use wav::{load_wav, write_wav_16bit};

pub(crate) use resample::resample_ratio;
pub(crate) use synth::fill_gaussian;

use std::path::PathBuf;
use thiserror::Error;

/// Canonical pipeline rate: frame counts downstream assume this.
pub const PIPELINE_SAMPLE_RATE: u32 = 22050;

#[derive(Debug, Error)]
pub enum AudioError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: hound::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: hound::Error,
    },
    #[error("unsupported encoding in {path}: {detail}")]
    Unsupported { path: PathBuf, detail: String },
    #[error("zero-length audio stream in {path}")]
    EmptyStream { path: PathBuf },
    #[error("invalid parameter: {0}")]
    BadParam(String),
    #[error("cannot read manifest {path}: {source}")]
    ManifestIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("manifest {path} is empty")]
    EmptyManifest { path: PathBuf },
    #[error("manifest line {line}: {msg}")]
    ManifestRow { line: usize, msg: String },
}

/// Mono sample sequence at a fixed rate; the unit the whole pipeline works on.
#[derive(Debug, Clone, PartialEq)]
pub struct AudioClip {
    /// Amplitudes in [-1, 1].
    pub samples: Vec<f32>,
    /// Sampling rate in Hz.
    pub sample_rate: u32,
    /// Opaque identifier, usually the source file stem.
    pub source_id: String,
}

impl AudioClip {
    pub fn new(samples: Vec<f32>, sample_rate: u32, source_id: impl Into<String>) -> Self {
        debug_assert!(sample_rate > 0);
        AudioClip {
            samples,
            sample_rate,
            source_id: source_id.into(),
        }
    }

    pub fn duration_seconds(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate as f64
    }

    /// Checks the admission invariants: non-empty, finite, amplitudes in [-1, 1].
    pub fn validate(&self) -> Result<(), AudioError> {
        if self.sample_rate == 0 {
            return Err(AudioError::BadParam("sample_rate must be positive".into()));
        }
        if self.samples.is_empty() {
            return Err(AudioError::BadParam(format!(
                "clip {} has no samples",
                self.source_id
            )));
        }
        if self.samples.iter().any(|s| !s.is_finite() || s.abs() > 1.0) {
            return Err(AudioError::BadParam(format!(
                "clip {} has samples outside [-1, 1]",
                self.source_id
            )));
        }
        Ok(())
    }
}

/// Forces a clip to exactly `round(seconds * sample_rate)` samples:
/// truncates overlong input, zero-pads short input at the tail so onsets
/// stay aligned.
pub fn fix_duration(clip: &AudioClip, seconds: f64) -> AudioClip {
    assert!(seconds > 0.0, "duration must be positive");
    let target = (seconds * clip.sample_rate as f64).round() as usize;
    let mut samples = clip.samples.clone();
    samples.resize(target, 0.0);
    AudioClip {
        samples,
        sample_rate: clip.sample_rate,
        source_id: clip.source_id.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ramp_clip(n: usize, sr: u32) -> AudioClip {
        let samples = (0..n).map(|i| (i as f32 / n as f32) * 0.5).collect();
        AudioClip::new(samples, sr, "ramp")
    }

    #[test]
    fn fix_duration_identity_when_exact() {
        let clip = ramp_clip(30 * 22050, 22050);
        let fixed = fix_duration(&clip, 30.0);
        assert_eq!(fixed.samples, clip.samples);
    }

    #[test]
    fn fix_duration_pads_tail_with_zeros() {
        let clip = ramp_clip(10 * 22050, 22050);
        let fixed = fix_duration(&clip, 30.0);
        assert_eq!(fixed.samples.len(), 30 * 22050);
        assert_eq!(fixed.samples[..clip.samples.len()], clip.samples[..]);
        assert!(fixed.samples[clip.samples.len()..].iter().all(|&s| s == 0.0));
    }

    #[test]
    fn fix_duration_truncates_to_prefix() {
        let clip = ramp_clip(40 * 22050, 22050);
        let fixed = fix_duration(&clip, 30.0);
        assert_eq!(fixed.samples.len(), 30 * 22050);
        assert_eq!(fixed.samples[..], clip.samples[..30 * 22050]);
    }

    #[test]
    fn fix_duration_is_idempotent() {
        let clip = ramp_clip(12345, 8000);
        let once = fix_duration(&clip, 2.0);
        let twice = fix_duration(&once, 2.0);
        assert_eq!(once.samples, twice.samples);
    }

    #[test]
    fn validate_rejects_out_of_range() {
        let mut clip = ramp_clip(10, 8000);
        clip.samples[3] = 1.5;
        assert!(clip.validate().is_err());
        assert!(ramp_clip(10, 8000).validate().is_ok());
    }
}
