use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use super::ModelError;

/// Keys accepted in a config file, in canonical order.
pub const CONFIG_KEYS: [&str; 15] = [
    "a_n",
    "a_f",
    "rate_n_bpcu",
    "rate_f_bpcu",
    "fc_hz",
    "bw_hz",
    "alpha",
    "K",
    "d_m",
    "R_D_m",
    "R_n_m",
    "R_f_m",
    "omega_I",
    "omega_f",
    "noise_power_db",
];

/// Physical and protocol parameters of a two-node downlink served by one
/// waveguide. Defaults are the reference deployment: 1 GHz carrier,
/// 1000 MHz bandwidth, 10 antennas at 5 m height, 10 m cell.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkConfig {
    /// Power fraction for the near node.
    pub a_n: f64,
    /// Power fraction for the far node.
    pub a_f: f64,
    /// Target rate of the near node, bits per channel use.
    pub rate_n_bpcu: f64,
    /// Target rate of the far node, bits per channel use.
    pub rate_f_bpcu: f64,
    pub carrier_freq_hz: f64,
    pub bandwidth_hz: f64,
    pub path_loss_alpha: f64,
    pub num_antennas: u32,
    /// Waveguide height above the ground plane.
    pub height_m: f64,
    pub radius_cell_m: f64,
    pub radius_n_m: f64,
    pub radius_f_m: f64,
    /// Mean power of the residual interference left by imperfect SIC.
    pub omega_i: f64,
    /// Mean NLoS channel power of the far node.
    pub omega_f: f64,
    /// Explicit noise power in dB; `None` means `-140 + 10 log10(B)`.
    pub noise_power_db: Option<f64>,
}

impl Default for NetworkConfig {
    fn default() -> Self {
        Self {
            a_n: 0.3,
            a_f: 0.7,
            rate_n_bpcu: 1.0,
            rate_f_bpcu: 1.0,
            carrier_freq_hz: 1e9,
            bandwidth_hz: 1e9,
            path_loss_alpha: 2.0,
            num_antennas: 10,
            height_m: 5.0,
            radius_cell_m: 10.0,
            radius_n_m: 6.0,
            radius_f_m: 10.0,
            omega_i: 0.01,
            omega_f: 1.0,
            noise_power_db: None,
        }
    }
}

impl NetworkConfig {
    /// Rescales the cell keeping `R_n = 0.6 R_D` and `R_f = R_D`.
    pub fn with_cell_radius(mut self, radius_cell_m: f64) -> Self {
        self.radius_cell_m = radius_cell_m;
        self.radius_n_m = 0.6 * radius_cell_m;
        self.radius_f_m = radius_cell_m;
        self
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        let mut problems = Vec::new();
        let mut check = |ok: bool, msg: String| {
            if !ok {
                problems.push(msg);
            }
        };
        let finite = [
            ("a_n", self.a_n),
            ("a_f", self.a_f),
            ("rate_n_bpcu", self.rate_n_bpcu),
            ("rate_f_bpcu", self.rate_f_bpcu),
            ("fc_hz", self.carrier_freq_hz),
            ("bw_hz", self.bandwidth_hz),
            ("alpha", self.path_loss_alpha),
            ("d_m", self.height_m),
            ("R_D_m", self.radius_cell_m),
            ("R_n_m", self.radius_n_m),
            ("R_f_m", self.radius_f_m),
            ("omega_I", self.omega_i),
            ("omega_f", self.omega_f),
        ];
        for (name, v) in finite {
            check(v.is_finite(), format!("{name} must be finite, got {v}"));
        }
        check(
            0.0 < self.a_n && self.a_n < self.a_f,
            format!("need 0 < a_n < a_f, got a_n={} a_f={}", self.a_n, self.a_f),
        );
        check(
            (self.a_n + self.a_f - 1.0).abs() <= 1e-9,
            format!("need a_n + a_f = 1, got {}", self.a_n + self.a_f),
        );
        check(
            0.0 < self.radius_n_m
                && self.radius_n_m < self.radius_f_m
                && self.radius_f_m <= self.radius_cell_m,
            format!(
                "need 0 < R_n < R_f <= R_D, got R_n={} R_f={} R_D={}",
                self.radius_n_m, self.radius_f_m, self.radius_cell_m
            ),
        );
        check(
            self.height_m > 0.0,
            format!("d_m must be positive, got {}", self.height_m),
        );
        check(self.num_antennas >= 1, "K must be at least 1".into());
        check(
            self.omega_i > 0.0,
            format!("omega_I must be positive, got {}", self.omega_i),
        );
        check(
            self.omega_f > 0.0,
            format!("omega_f must be positive, got {}", self.omega_f),
        );
        check(
            self.rate_n_bpcu > 0.0 && self.rate_f_bpcu > 0.0,
            "target rates must be positive".into(),
        );
        check(self.carrier_freq_hz > 0.0, "fc_hz must be positive".into());
        check(self.bandwidth_hz > 0.0, "bw_hz must be positive".into());
        check(self.path_loss_alpha > 0.0, "alpha must be positive".into());
        if let Some(n) = self.noise_power_db {
            check(
                n.is_finite(),
                format!("noise_power_db must be finite, got {n}"),
            );
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(ModelError::Invalid(problems))
        }
    }

    /// Noise power in dB: the explicit override, else `-140 + 10 log10(B)`.
    pub fn noise_power_db(&self) -> f64 {
        self.noise_power_db
            .unwrap_or_else(|| -140.0 + 10.0 * self.bandwidth_hz.log10())
    }

    /// Transmit SNR `P_b / (K σ²)` in dB for a total transmit power in dB.
    pub fn transmit_snr_db(&self, transmit_power_db: f64) -> f64 {
        transmit_power_db - 10.0 * f64::from(self.num_antennas).log10() - self.noise_power_db()
    }

    /// Parses a flat `key = value` file. Blank lines and `#` comments are
    /// skipped; unknown or repeated keys are errors; missing keys keep
    /// their defaults. `R_n_m`/`R_f_m` default to `0.6·R_D_m`/`R_D_m`.
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        let mut cfg = Self::default();
        let mut seen = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) = body.split_once('=').ok_or_else(|| ModelError::Malformed {
                line,
                text: raw.to_string(),
            })?;
            let (key, value) = (key.trim(), value.trim());
            if !CONFIG_KEYS.contains(&key) {
                return Err(ModelError::UnknownKey {
                    line,
                    key: key.to_string(),
                });
            }
            if !seen.insert(key.to_string()) {
                return Err(ModelError::DuplicateKey {
                    line,
                    key: key.to_string(),
                });
            }
            let bad = || ModelError::BadValue {
                line,
                key: key.to_string(),
                value: value.to_string(),
            };
            if key == "K" {
                cfg.num_antennas = value.parse().map_err(|_| bad())?;
                continue;
            }
            let v: f64 = value.parse().map_err(|_| bad())?;
            match key {
                "a_n" => cfg.a_n = v,
                "a_f" => cfg.a_f = v,
                "rate_n_bpcu" => cfg.rate_n_bpcu = v,
                "rate_f_bpcu" => cfg.rate_f_bpcu = v,
                "fc_hz" => cfg.carrier_freq_hz = v,
                "bw_hz" => cfg.bandwidth_hz = v,
                "alpha" => cfg.path_loss_alpha = v,
                "d_m" => cfg.height_m = v,
                "R_D_m" => cfg.radius_cell_m = v,
                "R_n_m" => cfg.radius_n_m = v,
                "R_f_m" => cfg.radius_f_m = v,
                "omega_I" => cfg.omega_i = v,
                "omega_f" => cfg.omega_f = v,
                "noise_power_db" => cfg.noise_power_db = Some(v),
                _ => unreachable!("key list checked above"),
            }
        }
        if !seen.contains("R_n_m") {
            cfg.radius_n_m = 0.6 * cfg.radius_cell_m;
        }
        if !seen.contains("R_f_m") {
            cfg.radius_f_m = cfg.radius_cell_m;
        }
        for key in CONFIG_KEYS.iter().filter(|k| !seen.contains(**k)) {
            if *key != "noise_power_db" {
                log::info!("config key `{key}` not given, using default");
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, ModelError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Canonical `(key, value)` pairs; feeding them back through
    /// [`NetworkConfig::parse`] reproduces `self`.
    pub fn to_pairs(&self) -> Vec<(&'static str, String)> {
        let mut pairs = vec![
            ("a_n", self.a_n.to_string()),
            ("a_f", self.a_f.to_string()),
            ("rate_n_bpcu", self.rate_n_bpcu.to_string()),
            ("rate_f_bpcu", self.rate_f_bpcu.to_string()),
            ("fc_hz", self.carrier_freq_hz.to_string()),
            ("bw_hz", self.bandwidth_hz.to_string()),
            ("alpha", self.path_loss_alpha.to_string()),
            ("K", self.num_antennas.to_string()),
            ("d_m", self.height_m.to_string()),
            ("R_D_m", self.radius_cell_m.to_string()),
            ("R_n_m", self.radius_n_m.to_string()),
            ("R_f_m", self.radius_f_m.to_string()),
            ("omega_I", self.omega_i.to_string()),
            ("omega_f", self.omega_f.to_string()),
        ];
        if let Some(n) = self.noise_power_db {
            pairs.push(("noise_power_db", n.to_string()));
        }
        pairs
    }

    pub fn to_config_string(&self) -> String {
        self.to_pairs()
            .iter()
            .fold(String::new(), |mut out, (k, v)| {
                let _ = writeln!(out, "{k} = {v}");
                out
            })
    }
}
