from .tokenizer import POS_ADJ, POS_NOUN, POS_OTHER, POS_VERB, Token, count_tokens, token_spans, tokenize
from .pipeline import (
    Pipeline,
    default_lexicon,
    default_stopwords,
    filter_stopwords,
    lemmatize_and_tag,
    load_lexicon,
    load_stopwords,
    noun_terms,
)
from .lda import EmptyCorpus, LdaConfig, TopicModel, dominant_topic, fit_lda, top_terms

__all__ = [
    "POS_ADJ", "POS_NOUN", "POS_OTHER", "POS_VERB",
    "Token", "count_tokens", "token_spans", "tokenize",
    "Pipeline", "default_lexicon", "default_stopwords",
    "filter_stopwords", "lemmatize_and_tag", "load_lexicon", "load_stopwords", "noun_terms",
    "EmptyCorpus", "LdaConfig", "TopicModel", "dominant_topic", "fit_lda", "top_terms",
]
