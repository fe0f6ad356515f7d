from dataclasses import replace

from ..core import Paa, Transitions
from ..misc.errors import ValidationError
from .cleavage import is_end


def apply_missed_cleavage(paa: Paa, p_miss: float) -> Paa:
    """Let the enzyme skip each cleavage site with probability `p_miss`.

    Every transition into an end state (a, c) keeps 1 - p_miss of its mass;
    the rest goes to the residue state (a, c), which continues the fragment.
    """
    if not 0 <= p_miss < 1:
        raise ValidationError("missed cleavage probability must lie in [0, 1)")
    if p_miss == 0:
        return paa
    if len(paa.transitions.factors) != 1:
        raise ValidationError("missed cleavages need single-factor transitions")
    (factor,) = paa.transitions.factors
    edges = []
    for source, target, p in zip(factor.rows.tolist(), factor.cols.tolist(), factor.probs.tolist()):
        label = paa.labels[target]
        if not (isinstance(label, tuple) and is_end(label[0])):
            edges.append((source, target, p))
            continue
        (_, residue), context = label
        if (residue, context) not in paa.label_index:
            raise ValidationError(f"no state continues the fragment with {residue!r}")
        edges.append((source, target, p * (1 - p_miss)))
        edges.append((source, paa.label_index[(residue, context)], p * p_miss))
    return replace(paa, transitions=Transitions.from_edges(paa.num_states, edges))
