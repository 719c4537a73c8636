//! The data model: ground sets, cyclic orders, rotation systems and relabellings.
//!
//! Every value here is immutable once built. Cyclic orders are always stored in
//! their canonical linearization (minimum label first), so structural equality,
//! hashing and ordering of the derived impls coincide with equality of cyclic
//! orders.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A ground element. Labels are positive; `0` is rejected everywhere.
pub type Label = u32;

/// Strictly increasing sequence of distinct positive labels, `i_1 < ... < i_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet(Vec<Label>);

impl GroundSet {
    pub fn new(mut labels: Vec<Label>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyGround);
        }
        if labels.contains(&0) {
            return Err(Error::NonPositiveLabel);
        }
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel {
                label: w[0],
                element: None,
            });
        }
        Ok(GroundSet(labels))
    }

    /// `{1, ..., n}`.
    pub fn range(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGround);
        }
        Ok(GroundSet((1..=n as Label).collect()))
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, label: Label) -> Option<usize> {
        self.0.binary_search(&label).ok()
    }

    pub fn contains(&self, label: Label) -> bool {
        self.index_of(label).is_some()
    }

    pub fn min(&self) -> Label {
        self.0[0]
    }

    pub fn max(&self) -> Label {
        self.0[self.0.len() - 1]
    }
}

/// A cyclic permutation of distinct labels, kept rotated so that its smallest
/// entry comes first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicOrder(Vec<Label>);

fn canonicalize(entries: &mut [Label]) {
    if let Some(pos) = entries
        .iter()
        .enumerate()
        .min_by_key(|&(_, l)| *l)
        .map(|(i, _)| i)
    {
        entries.rotate_left(pos);
    }
}

impl CyclicOrder {
    /// Builds a cyclic order from any linearization. Entries must be distinct.
    pub fn new(entries: Vec<Label>) -> Result<Self> {
        let mut sorted = entries.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel {
                label: w[0],
                element: None,
            });
        }
        Ok(Self::from_distinct(entries))
    }

    /// Caller guarantees distinct entries.
    pub(crate) fn from_distinct(mut entries: Vec<Label>) -> Self {
        canonicalize(&mut entries);
        CyclicOrder(entries)
    }

    /// The canonical linearization.
    pub fn entries(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, label: Label) -> bool {
        self.0.contains(&label)
    }

    pub fn position(&self, label: Label) -> Option<usize> {
        self.0.iter().position(|&l| l == label)
    }

    /// The same cycle traversed in the opposite direction.
    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        Self::from_distinct(v)
    }

    /// Deletes every entry not accepted by `keep`; the survivors keep their
    /// cyclic order.
    pub fn retain(&self, mut keep: impl FnMut(Label) -> bool) -> Self {
        Self::from_distinct(self.0.iter().copied().filter(|&l| keep(l)).collect())
    }

    /// Renames entries through an injective map.
    pub fn map(&self, f: impl FnMut(Label) -> Label) -> Self {
        Self::from_distinct(self.0.iter().copied().map(f).collect())
    }

    /// The linear sequence read starting at canonical position `start`.
    pub fn linearize_from(&self, start: usize) -> Vec<Label> {
        let k = self.0.len();
        (0..k).map(|i| self.0[(start + i) % k]).collect()
    }

    /// Whether `seq`, read cyclically, is this cycle.
    pub fn is_cyclically(&self, seq: &[Label]) -> bool {
        seq.len() == self.0.len() && Self::from_distinct(seq.to_vec()) == *self
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

/// An abstract rotation system: one cyclic order per ground element over the
/// remaining elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RotationSystem {
    ground: GroundSet,
    /// `rotations[k]` belongs to `ground.labels()[k]`.
    rotations: Vec<CyclicOrder>,
}

impl RotationSystem {
    /// Checks raw per-element label sequences and builds the system in
    /// canonical form.
    pub fn validate<I, R>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, R)>,
        R: Into<Vec<Label>>,
    {
        let mut raw: Vec<(Label, Vec<Label>)> =
            raw.into_iter().map(|(l, r)| (l, r.into())).collect();
        let ground = GroundSet::new(raw.iter().map(|(l, _)| *l).collect())?;
        raw.sort_by_key(|(l, _)| *l);

        let n = ground.len();
        let mut rotations = Vec::with_capacity(n);
        for (element, rotation) in raw {
            if rotation.contains(&0) {
                return Err(Error::NonPositiveLabel);
            }
            let mut sorted = rotation.clone();
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateLabel {
                    label: w[0],
                    element: Some(element),
                });
            }
            if rotation.contains(&element) {
                return Err(Error::SelfReference { element });
            }
            if rotation.len() != n - 1 || rotation.iter().any(|&l| !ground.contains(l)) {
                return Err(Error::MissingOrExtraLabel { element });
            }
            rotations.push(CyclicOrder::from_distinct(rotation));
        }
        Ok(RotationSystem { ground, rotations })
    }

    /// Caller guarantees the rotation invariants.
    pub(crate) fn from_parts(ground: GroundSet, rotations: Vec<CyclicOrder>) -> Self {
        debug_assert_eq!(ground.len(), rotations.len());
        RotationSystem { ground, rotations }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn labels(&self) -> &[Label] {
        self.ground.labels()
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// Systems on at most two elements have rotations too short to be
    /// meaningfully cyclic.
    pub fn is_degenerate(&self) -> bool {
        self.len() <= 2
    }

    pub fn rotation(&self, label: Label) -> Result<&CyclicOrder> {
        self.ground
            .index_of(label)
            .map(|k| &self.rotations[k])
            .ok_or(Error::UnknownLabel(label))
    }

    /// Rotation of the `k`-th smallest ground element.
    pub fn rotation_at(&self, k: usize) -> &CyclicOrder {
        &self.rotations[k]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Label, &CyclicOrder)> + '_ {
        self.ground.labels().iter().copied().zip(self.rotations.iter())
    }

    /// The rotation subsystem induced by `subset`.
    pub fn induce(&self, subset: &[Label]) -> Result<Self> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut keep = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&l) = keep.iter().find(|&&l| !self.ground.contains(l)) {
            return Err(Error::UnknownLabel(l));
        }
        let rotations = keep
            .iter()
            .map(|&l| {
                self.rotation(l)
                    .expect("checked above")
                    .retain(|x| keep.binary_search(&x).is_ok())
            })
            .collect();
        Ok(RotationSystem {
            ground: GroundSet(keep),
            rotations,
        })
    }

    /// Reverses every rotation.
    pub fn invert(&self) -> Self {
        RotationSystem {
            ground: self.ground.clone(),
            rotations: self.rotations.iter().map(CyclicOrder::reversed).collect(),
        }
    }

    /// Applies `relabel` to every label. Its domain must be exactly the
    /// ground set.
    pub fn relabel(&self, relabel: &Relabelling) -> Result<Self> {
        if relabel.domain() != self.labels() {
            return Err(Error::NotABijection);
        }
        let mut pairs: Vec<(Label, CyclicOrder)> = self
            .iter()
            .map(|(l, rot)| {
                let image = relabel.get(l).expect("domain equals ground");
                (image, rot.map(|x| relabel.get(x).expect("domain equals ground")))
            })
            .collect();
        pairs.sort_by_key(|(l, _)| *l);
        let (labels, rotations) = pairs.into_iter().unzip();
        Ok(RotationSystem {
            ground: GroundSet(labels),
            rotations,
        })
    }

    /// Relabels order-preservingly onto `{1, ..., n}`.
    pub fn standardize(&self) -> (Self, Relabelling) {
        let relabel = Relabelling::order_preserving(self.labels());
        let system = self.relabel(&relabel).expect("domain is the ground set");
        (system, relabel)
    }
}

impl fmt::Display for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (l, rot)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}:{rot}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for RotationSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rotations: Vec<&[Label]> = self.rotations.iter().map(|r| r.entries()).collect();
        let mut st = serializer.serialize_struct("RotationSystem", 2)?;
        st.serialize_field("ground", self.labels())?;
        st.serialize_field("rotations", &rotations)?;
        st.end()
    }
}

/// A bijection between two equally sized label sets, stored sorted by domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relabelling {
    domain: Vec<Label>,
    images: Vec<Label>,
}

impl Relabelling {
    pub fn new(pairs: impl IntoIterator<Item = (Label, Label)>) -> Result<Self> {
        let mut pairs: Vec<(Label, Label)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        let (domain, images): (Vec<Label>, Vec<Label>) = pairs.into_iter().unzip();
        let mut sorted_images = images.clone();
        sorted_images.sort_unstable();
        let distinct = |v: &[Label]| v.windows(2).all(|w| w[0] != w[1]);
        if !distinct(&domain) || !distinct(&sorted_images) {
            return Err(Error::NotABijection);
        }
        if domain.contains(&0) || images.contains(&0) {
            return Err(Error::NonPositiveLabel);
        }
        Ok(Relabelling { domain, images })
    }

    pub fn identity(labels: &[Label]) -> Self {
        let mut domain = labels.to_vec();
        domain.sort_unstable();
        domain.dedup();
        Relabelling {
            images: domain.clone(),
            domain,
        }
    }

    /// The unique order-preserving bijection from `labels` onto `{1, ..., n}`.
    pub fn order_preserving(labels: &[Label]) -> Self {
        let mut domain = labels.to_vec();
        domain.sort_unstable();
        domain.dedup();
        let images = (1..=domain.len() as Label).collect();
        Relabelling { domain, images }
    }

    pub fn domain(&self) -> &[Label] {
        &self.domain
    }

    /// Images of the domain labels, in ascending domain order.
    pub fn images(&self) -> &[Label] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn get(&self, label: Label) -> Option<Label> {
        self.domain
            .binary_search(&label)
            .ok()
            .map(|k| self.images[k])
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        self.domain.iter().copied().zip(self.images.iter().copied())
    }

    pub fn inverse(&self) -> Self {
        Relabelling::new(self.pairs().map(|(a, b)| (b, a))).expect("inverse of a bijection")
    }

    /// `x -> next(self(x))`, defined when `next`'s domain is this map's codomain.
    pub fn then(&self, next: &Relabelling) -> Option<Self> {
        let mut codomain = self.images.clone();
        codomain.sort_unstable();
        if codomain != next.domain {
            return None;
        }
        let images = self
            .images
            .iter()
            .map(|&y| next.get(y).expect("codomain checked"))
            .collect();
        Some(Relabelling {
            domain: self.domain.clone(),
            images,
        })
    }

    pub fn is_order_preserving(&self) -> bool {
        self.images.windows(2).all(|w| w[0] < w[1])
    }
}

impl fmt::Display for Relabelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}->{b}")?;
        }
        Ok(())
    }
}

/// Searches for a relabelling `phi: ground(sigma) -> ground(pi)` turning
/// `sigma` into `pi`.
///
/// The image of `sigma`'s smallest element fixes, together with a rotation
/// offset, the image of every other element (they all occur in its rotation),
/// so only `n * (n - 1)` candidate bijections need checking. When several
/// witnesses exist the one with the lexicographically smallest image sequence
/// is returned.
pub fn equivalent(pi: &RotationSystem, sigma: &RotationSystem) -> Option<Relabelling> {
    let n = pi.len();
    if sigma.len() != n {
        return None;
    }
    if n == 1 {
        return Some(Relabelling {
            domain: sigma.labels().to_vec(),
            images: pi.labels().to_vec(),
        });
    }

    let anchor_rotation = sigma.rotation_at(0).entries();
    let sigma_index = |l: Label| sigma.ground.index_of(l).expect("label of sigma");
    let mut best: Option<Vec<Label>> = None;
    let mut images = vec![0; n];

    for (x_idx, &x) in pi.labels().iter().enumerate() {
        let target = pi.rotation_at(x_idx).entries();
        for offset in 0..n - 1 {
            images[0] = x;
            for (k, &b) in anchor_rotation.iter().enumerate() {
                images[sigma_index(b)] = target[(k + offset) % (n - 1)];
            }
            let consistent = (0..n).all(|y_idx| {
                let image_y = images[y_idx];
                let mapped = sigma
                    .rotation_at(y_idx)
                    .map(|l| images[sigma_index(l)]);
                pi.rotation(image_y).map(|r| *r == mapped).unwrap_or(false)
            });
            if consistent && best.as_ref().is_none_or(|b| images < *b) {
                best = Some(images.clone());
            }
        }
    }

    best.map(|images| Relabelling {
        domain: sigma.labels().to_vec(),
        images,
    })
}
