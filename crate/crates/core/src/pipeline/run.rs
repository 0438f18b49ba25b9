use crate::automaton::{integrate, AutomatonGrid};
use crate::error::{Error, Result};
use crate::graph::{apply_prior, graph_saliency, Polarity, QuerySet};
use crate::model::{quantize, LabImage, QuantizedPalette, SaliencyMap, DEFAULT_BINS};
use crate::priors::{compute_priors, PriorInputs, PriorStack, ScribbleSet};
use crate::queries::{border_clusters, border_query_saliency, opf_cluster, saliency_queries, BorderCluster};
use crate::superpixels::{next_scale, oisf_segment, SuperpixelSegmentation};

use super::config::{PipelineConfig, QueryStrategy};

/// Queries used by one iteration.
#[derive(Debug, Clone, PartialEq)]
pub enum QuerySelection {
    /// Border superpixels of each color cluster, one background run each.
    Border(Vec<BorderCluster>),
    Set(QuerySet),
}

impl QuerySelection {
    /// Every superpixel acting as a query.
    pub fn members(&self) -> Vec<usize> {
        match self {
            QuerySelection::Border(groups) => {
                let mut all: Vec<usize> = groups.iter().flat_map(|g| g.border.iter().copied()).collect();
                all.sort_unstable();
                all
            }
            QuerySelection::Set(q) => q.members().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterationTrace {
    pub superpixel_count: usize,
    pub segmentation: SuperpixelSegmentation,
    pub priors: PriorStack,
    /// Integrated prior map after this iteration's automaton steps.
    pub prior_map: SaliencyMap,
    pub queries: QuerySelection,
    pub saliency: SaliencyMap,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunTrace {
    pub iterations: Vec<IterationTrace>,
    /// Fusion of every map but the first.
    pub final_map: SaliencyMap,
}

struct Context<'a> {
    image: &'a LabImage,
    palette: QuantizedPalette,
    config: &'a PipelineConfig,
    scribbles: Option<&'a ScribbleSet>,
}

impl Context<'_> {
    fn segment(&self, object_map: &SaliencyMap, n: usize) -> Result<SuperpixelSegmentation> {
        let mut params = self.config.oisf.clone();
        params.n = n;
        oisf_segment(self.image, object_map, &self.palette, &params)
    }

    fn priors(&self, seg: &SuperpixelSegmentation, previous: Option<&SaliencyMap>) -> Result<PriorStack> {
        compute_priors(
            &self.config.priors,
            self.image,
            seg,
            &self.palette,
            &self.config.prior_params,
            PriorInputs {
                previous,
                scribbles: self.scribbles,
            },
        )
    }

    fn uniform(&self) -> SaliencyMap {
        SaliencyMap::constant(self.image.width(), self.image.height(), 0.5).expect("0.5 is a valid saliency")
    }

    fn integrate_stack(&self, stack: &PriorStack) -> Result<SaliencyMap> {
        if stack.is_empty() {
            return Ok(self.uniform());
        }
        let maps: Vec<SaliencyMap> = stack.layers().iter().map(|l| l.raster.clone()).collect();
        integrate(&maps, self.config.lambda, self.config.ca_steps)
    }

    fn border(&self, seg: &SuperpixelSegmentation) -> Result<(QuerySelection, Vec<f64>)> {
        let clusters = opf_cluster(seg)?;
        let groups = border_clusters(seg, &clusters);
        let vs = border_query_saliency(seg, &self.palette, &clusters, self.config.psi, self.config.sigma_s)?;
        Ok((QuerySelection::Border(groups), vs))
    }

    fn with_set(&self, seg: &SuperpixelSegmentation, set: QuerySet) -> Result<(QuerySelection, Vec<f64>)> {
        let vs = graph_saliency(seg, &self.palette, &set, self.config.psi, self.config.sigma_s)?;
        Ok((QuerySelection::Set(set), vs))
    }

    fn scribble_queries(&self, seg: &SuperpixelSegmentation) -> Result<QuerySet> {
        let scribbles = self.scribbles.filter(|s| !s.is_empty()).ok_or(Error::EmptyScribbles)?;
        let labels = seg.labels();
        let pick = |pixels: &[usize]| -> Result<Vec<usize>> {
            pixels
                .iter()
                .map(|&p| {
                    (p < labels.len()).then(|| labels.label(p)).ok_or_else(|| {
                        Error::InvalidParameter(format!("scribble pixel {p} outside the image"))
                    })
                })
                .collect()
        };
        if !scribbles.object.is_empty() {
            QuerySet::new(pick(&scribbles.object)?, Polarity::Foreground)
        } else {
            QuerySet::new(pick(&scribbles.background)?, Polarity::Background)
        }
    }
}

/// Carries a query set to a new segmentation: a superpixel is selected when
/// most of its pixels were covered by selected superpixels, or, failing
/// that for all of them, the one with the largest covered share.
fn remap_queries(
    previous: &SuperpixelSegmentation,
    set: &QuerySet,
    current: &SuperpixelSegmentation,
) -> Result<QuerySet> {
    let mut covered = vec![0usize; current.len()];
    for (p, &l) in previous.labels().labels().iter().enumerate() {
        if set.contains(l as usize) {
            covered[current.labels().label(p)] += 1;
        }
    }
    let share: Vec<f64> = covered
        .iter()
        .enumerate()
        .map(|(s, &c)| c as f64 / current.superpixel(s).size as f64)
        .collect();
    let mut members: Vec<usize> = (0..current.len()).filter(|&s| share[s] > 0.5).collect();
    if members.is_empty() {
        let best = (0..current.len())
            .filter(|&s| covered[s] > 0)
            .max_by(|&a, &b| share[a].total_cmp(&share[b]).then(b.cmp(&a)))
            .ok_or(Error::NoQueriesSelected)?;
        members.push(best);
    }
    QuerySet::new(members, set.polarity())
}

/// Runs the saliency and superpixel loop for `config.iterations` rounds.
pub fn run(image: &LabImage, config: &PipelineConfig, scribbles: Option<&ScribbleSet>) -> Result<RunTrace> {
    config.validate()?;
    if image.is_empty() {
        return Err(Error::EmptyImage);
    }
    let needs_scribbles =
        config.query_strategy == QueryStrategy::Scribble || config.priors.contains(&crate::priors::Prior::Scribble);
    if needs_scribbles && scribbles.is_none_or(ScribbleSet::is_empty) {
        return Err(Error::EmptyScribbles);
    }
    let ctx = Context {
        image,
        palette: quantize(image, DEFAULT_BINS)?,
        config,
        scribbles,
    };
    let mut n = config.oisf.n.min(image.len());
    let mut automaton: Option<AutomatonGrid> = None;
    let mut trace: Vec<IterationTrace> = Vec::with_capacity(config.iterations);

    for t in 0..config.iterations {
        let previous = trace.last();
        let object_map = match previous {
            Some(prev) => prev.saliency.clone(),
            None if config.priors.is_empty() => ctx.uniform(),
            None => {
                let seg = ctx.segment(&ctx.uniform(), n)?;
                ctx.integrate_stack(&ctx.priors(&seg, None)?)?
            }
        };
        let seg = ctx.segment(&object_map, n)?;
        let priors = ctx.priors(&seg, previous.map(|p| &p.saliency))?;

        let prior_map = if priors.is_empty() {
            ctx.uniform()
        } else {
            let named: Vec<(String, &SaliencyMap)> = priors
                .layers()
                .iter()
                .map(|l| (l.prior.name().to_string(), &l.raster))
                .collect();
            let grid = match automaton.as_mut() {
                Some(grid) => {
                    grid.sync_layers(&named)?;
                    grid
                }
                None => automaton.insert(AutomatonGrid::with_names(&named, config.lambda)?),
            };
            grid.run(config.ca_steps);
            grid.finalize()
        };

        let (queries, vs) = match previous {
            None => match config.query_strategy {
                QueryStrategy::Border => ctx.border(&seg)?,
                QueryStrategy::Prior => {
                    let set = saliency_queries(&seg, &prior_map, Polarity::Foreground)?;
                    ctx.with_set(&seg, set)?
                }
                QueryStrategy::Scribble => {
                    let set = ctx.scribble_queries(&seg)?;
                    ctx.with_set(&seg, set)?
                }
            },
            Some(prev) => match saliency_queries(&seg, &prev.saliency, Polarity::Foreground) {
                Ok(set) => ctx.with_set(&seg, set)?,
                Err(Error::NoQueriesSelected) => match &prev.queries {
                    QuerySelection::Border(_) => ctx.border(&seg)?,
                    QuerySelection::Set(set) => {
                        let set = remap_queries(&prev.segmentation, set, &seg)?;
                        ctx.with_set(&seg, set)?
                    }
                },
                Err(e) => return Err(e),
            },
        };

        let prior_scores = seg.superpixel_means(prior_map.values());
        let saliency = apply_prior(&seg, &vs, &prior_scores)?;
        trace.push(IterationTrace {
            superpixel_count: n,
            segmentation: seg,
            priors,
            prior_map,
            queries,
            saliency,
        });
        if t + 1 < config.iterations {
            n = next_scale(n, config.oisf.kappa);
        }
    }

    let kept: Vec<SaliencyMap> = trace[1..].iter().map(|it| it.saliency.clone()).collect();
    let final_map = integrate(&kept, config.lambda, config.ca_steps)?;
    Ok(RunTrace {
        iterations: trace,
        final_map,
    })
}
