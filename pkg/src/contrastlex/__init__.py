"""Thesaurus-plus-corpus lexical contrast toolkit."""

from .contrast import (ADJACENCY_HEURISTIC, ADJACENCY_OFF, AdjacencyMode,
                       ContrastIndex, ContrastJudgment, Tier,
                       build_contrast_index, build_lexicon, contrast_class,
                       degree_compare, manual_adjacency)
from .corpus import (AssociationStats, CooccurrenceStore, association_stats,
                     count_corpus, load_counts, pmi, save_counts,
                     two_sample_t_test)
from .seeds import (AffixPattern, SeedPair, builtin_affix_patterns,
                    generate_affix_seeds, load_adjacency_annotations,
                    load_seed_list)
from .tasks import (ContrastQuestion, EvalResult, PairRelationItem,
                    classify_pair, classify_pairs, evaluate_questions,
                    random_baseline, seed_lookup_baseline, solve_question)
from .thesaurus import (Category, Paragraph, Thesaurus, WordLocation,
                        dump_thesaurus, load_thesaurus, locate)

__version__ = "0.1.0"
