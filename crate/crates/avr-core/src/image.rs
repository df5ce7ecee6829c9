use crate::AvrError;

/// A single-channel image with intensities on a fixed 8-bit grid.
///
/// Pixels are stored as `u8` and interpreted as `value / 255.0`, so every
/// intensity lies in `[0, 1]` by construction and images round-trip through
/// 8-bit grayscale PNG losslessly. All images in one dataset share the same
/// height and width; shape checks happen at the operations that combine
/// images, not here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Image {
    height: usize,
    width: usize,
    data: Vec<u8>,
}

impl Image {
    pub fn new(height: usize, width: usize, data: Vec<u8>) -> Result<Self, AvrError> {
        if height == 0 || width == 0 {
            return Err(AvrError::invalid("image dimensions must be positive"));
        }
        if data.len() != height * width {
            return Err(AvrError::ShapeMismatch {
                expected: format!("{} bytes for {height}x{width}", height * width),
                got: format!("{} bytes", data.len()),
            });
        }
        Ok(Image { height, width, data })
    }

    pub fn zeros(height: usize, width: usize) -> Self {
        Image { height, width, data: vec![0; height * width] }
    }

    /// Quantizes real-valued intensities onto the 8-bit grid, clamping to
    /// `[0, 1]` first.
    pub fn from_intensities(height: usize, width: usize, values: &[f64]) -> Result<Self, AvrError> {
        if values.len() != height * width {
            return Err(AvrError::ShapeMismatch {
                expected: format!("{} values", height * width),
                got: format!("{} values", values.len()),
            });
        }
        let data = values
            .iter()
            .map(|&v| (v.clamp(0.0, 1.0) * 255.0).round() as u8)
            .collect();
        Ok(Image { height, width, data })
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn same_shape(&self, other: &Image) -> bool {
        self.height == other.height && self.width == other.width
    }

    /// Raw 8-bit pixel, row-major.
    pub fn pixel(&self, y: usize, x: usize) -> u8 {
        self.data[y * self.width + x]
    }

    pub fn set_pixel(&mut self, y: usize, x: usize, value: u8) {
        self.data[y * self.width + x] = value;
    }

    /// Intensity in `[0, 1]`.
    pub fn intensity(&self, y: usize, x: usize) -> f64 {
        self.pixel(y, x) as f64 / 255.0
    }

    pub fn bytes(&self) -> &[u8] {
        &self.data
    }

    /// Row-major intensities in `[0, 1]`.
    pub fn intensities(&self) -> Vec<f64> {
        self.data.iter().map(|&v| v as f64 / 255.0).collect()
    }

    /// Mean squared distance in intensity space; images must share a shape.
    pub fn mean_squared_distance(&self, other: &Image) -> Result<f64, AvrError> {
        if !self.same_shape(other) {
            return Err(AvrError::ShapeMismatch {
                expected: format!("{}x{}", self.height, self.width),
                got: format!("{}x{}", other.height, other.width),
            });
        }
        let sum: f64 = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| {
                let d = a as f64 / 255.0 - b as f64 / 255.0;
                d * d
            })
            .sum();
        Ok(sum / self.data.len() as f64)
    }
}
