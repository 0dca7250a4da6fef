#!/usr/bin/env python3
"""Regenerate the bundled language-identification corpora and profiles.

Sentences are composed deterministically from per-language phrase banks
(hand-written vocabulary, local-news register). Outputs, per language:

  resources/langid/<lang>.train.txt     training corpus (one sentence/line)
  resources/langid/<lang>.heldout.txt   held-out set, every line >= 40 chars
  resources/langid/profiles/<lang>.profile

It also refreshes resources/normalize/<lang>/wordforms.txt with the bank
vocabulary plus the hand-maintained extras below, and rewrites the resource
manifest with the entry counts of everything under resources/normalize.

Run from the repository root:  python tools/build_langid_corpora.py
"""

from __future__ import annotations

import json
import random
import sys
import unicodedata
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from mediawatch.langid import build_profile, save_profile  # noqa: E402

TRAIN_SENTENCES = 800
HELDOUT_SENTENCES = 200
HELDOUT_MIN_CHARS = 40
SEED = 20160908

BANKS = {
    "es": {
        "openers": [
            "según fuentes municipales,", "como estaba previsto,", "tras varios meses de trabajo,",
            "por segundo año consecutivo,", "a pesar de la lluvia,", "con gran expectación,",
            "sin apenas publicidad,", "gracias al esfuerzo de los voluntarios,",
        ],
        "subjects": [
            "el ayuntamiento", "la asociación de vecinos", "el equipo local", "la compañía de teatro",
            "el museo de la ciudad", "la biblioteca municipal", "el grupo de montaña", "la orquesta joven",
            "el club de lectura", "la escuela de música", "el mercado de abastos", "la universidad pública",
            "el festival de cine", "la cocinera del barrio", "el periodista cultural", "la alcaldesa",
            "el consejo escolar", "la banda del pueblo", "el taller de cerámica", "la librería antigua",
            "el coro parroquial", "la peña ciclista", "el centro cívico", "la radio comarcal",
        ],
        "predicates": [
            "anunció un nuevo programa de actividades", "presentó los resultados del año pasado",
            "organizó un concurso de fotografía", "abrió el plazo de inscripción",
            "celebró su vigésimo aniversario", "publicó la lista de seleccionados",
            "ofreció una rueda de prensa", "inauguró la temporada de conciertos",
            "preparó una exposición itinerante", "recuperó una tradición olvidada",
            "repartió premios entre los asistentes", "estrenó una obra muy esperada",
            "amplió el horario de visitas", "firmó un acuerdo con los comercios",
            "propuso mejoras para el transporte", "reunió a cientos de personas",
            "agradeció el apoyo del público", "convocó una jornada de puertas abiertas",
            "renovó la página web del proyecto", "impulsó un plan de lectura",
            "explicó las obras de la plaza", "presentó el cartel de las fiestas",
            "defendió el presupuesto de cultura", "lanzó una campaña de socios",
        ],
        "places": [
            "en el casco viejo", "en la plaza mayor", "junto a la ría", "en el polideportivo",
            "en la sala de exposiciones", "en el paseo marítimo", "en el barrio de San Andrés",
            "en el auditorio municipal", "frente al teatro", "en la casa de cultura",
            "en el parque grande", "en la estación de tren",
        ],
        "times": [
            "este fin de semana", "durante el mes de marzo", "a primera hora de la mañana",
            "el próximo jueves", "antes del verano", "tras la reunión de ayer", "durante las fiestas",
            "a finales de año", "esta misma tarde", "después del estreno", "en plena campaña",
            "desde el pasado lunes",
        ],
    },
    "en": {
        "openers": [
            "according to council sources,", "as previously planned,", "after months of preparation,",
            "for the second year running,", "despite the heavy rain,", "amid great expectation,",
            "with little advance notice,", "thanks to the volunteers,",
        ],
        "subjects": [
            "the city council", "the local museum", "the neighbourhood association", "the youth orchestra",
            "the reading club", "the village band", "the film festival", "the public library",
            "the cooking school", "the hiking group", "the history society", "the community radio",
            "the street market", "the theatre company", "the sports club", "the art workshop",
            "the student union", "the farmers cooperative", "the charity committee", "the music academy",
            "the evening school", "the rowing team",
        ],
        "predicates": [
            "announced a new season of events", "published the long awaited programme",
            "opened registration for the workshops", "celebrated its twentieth anniversary",
            "unveiled the winning photographs", "hosted a lively press conference",
            "launched a membership campaign", "premiered a much discussed play",
            "extended its opening hours", "signed an agreement with local shops",
            "welcomed hundreds of visitors", "thanked the volunteers for their work",
            "organised a day of open doors", "presented the festival poster",
            "defended the culture budget", "recovered a forgotten tradition",
            "prepared a travelling exhibition", "shared the results of the survey",
            "promised further improvements", "awarded prizes to the participants",
            "revamped the project website", "scheduled extra performances",
        ],
        "places": [
            "in the old town", "on the main square", "by the riverside", "at the sports hall",
            "in the exhibition room", "along the seafront", "in the northern district",
            "at the concert hall", "opposite the theatre", "at the cultural centre",
            "in the great park", "near the railway station",
        ],
        "times": [
            "this weekend", "throughout the month of March", "early in the morning", "next Thursday",
            "before the summer break", "after yesterday's meeting", "during the festivities",
            "towards the end of the year", "this very evening", "right after the premiere",
            "in the middle of the campaign", "since last Monday",
        ],
    },
    "fr": {
        "openers": [
            "selon la mairie,", "comme prévu,", "après des mois de préparation,",
            "pour la deuxième année consécutive,", "malgré la pluie,", "dans une grande attente,",
            "sans grande publicité,", "grâce aux bénévoles,",
        ],
        "subjects": [
            "la mairie", "le musée municipal", "l'association du quartier", "l'orchestre des jeunes",
            "le club de lecture", "la fanfare du village", "le festival du film", "la bibliothèque publique",
            "l'école de cuisine", "le groupe de randonnée", "la société d'histoire", "la radio locale",
            "le marché couvert", "la troupe de théâtre", "le club sportif", "l'atelier d'art",
            "le syndicat étudiant", "la coopérative agricole", "le comité des fêtes",
            "l'académie de musique", "les cours du soir", "l'équipe d'aviron",
        ],
        "predicates": [
            "a annoncé une nouvelle saison culturelle", "a publié le programme tant attendu",
            "a ouvert les inscriptions aux ateliers", "a fêté son vingtième anniversaire",
            "a dévoilé les photographies primées", "a tenu une conférence de presse animée",
            "a lancé une campagne d'adhésion", "a créé une pièce très commentée",
            "a prolongé ses horaires d'ouverture", "a signé un accord avec les commerçants",
            "a accueilli des centaines de visiteurs", "a remercié les bénévoles pour leur travail",
            "a organisé une journée portes ouvertes", "a présenté l'affiche du festival",
            "a défendu le budget de la culture", "a fait revivre une tradition oubliée",
            "a préparé une exposition itinérante", "a partagé les résultats de l'enquête",
            "a promis de nouvelles améliorations", "a remis les prix aux participants",
            "a refait le site du projet", "a prévu des séances supplémentaires",
        ],
        "places": [
            "dans la vieille ville", "sur la grand-place", "au bord de la rivière",
            "à la salle des sports", "dans la salle d'exposition", "le long du front de mer",
            "dans le quartier nord", "à la salle de concert", "en face du théâtre",
            "au centre culturel", "dans le grand parc", "près de la gare",
        ],
        "times": [
            "ce week-end", "pendant tout le mois de mars", "tôt le matin", "jeudi prochain",
            "avant les vacances d'été", "après la réunion d'hier", "pendant les fêtes",
            "vers la fin de l'année", "dès ce soir", "juste après la première",
            "en pleine campagne", "depuis lundi dernier",
        ],
    },
    "eu": {
        "openers": [
            "udal iturrien arabera,", "aurreikusita zegoen bezala,", "hilabete askotako lanaren ondoren,",
            "bigarren urtez jarraian,", "euria gorabehera,", "ikusmin handiz,",
            "publizitate handirik gabe,", "boluntarioen ahaleginari esker,",
        ],
        "subjects": [
            "udalak", "auzo elkarteak", "herriko taldeak", "antzerki konpainiak", "hiriko museoak",
            "udal liburutegiak", "mendi taldeak", "gazte orkestrak", "irakurle klubak",
            "musika eskolak", "azoka batzordeak", "unibertsitate publikoak", "zine jaialdiak",
            "auzoko sukaldariak", "kazetari kulturalak", "alkateak", "eskola kontseiluak",
            "herriko bandak", "zeramika tailerrak", "liburu denda zaharrak", "elizako abesbatzak",
            "txirrindulari taldeak", "gizarte etxeak", "eskualdeko irratiak",
        ],
        "predicates": [
            "egitarau berria aurkeztu du", "iazko emaitzak azaldu ditu", "argazki lehiaketa antolatu du",
            "izena emateko epea zabaldu du", "hogeigarren urteurrena ospatu du",
            "hautatuen zerrenda argitaratu du", "prentsaurrekoa eskaini du",
            "kontzertu denboraldia inauguratu du", "erakusketa ibiltaria prestatu du",
            "ahaztutako ohitura berreskuratu du", "sariak banatu ditu parte hartzaileen artean",
            "oso espero zen antzezlana estreinatu du", "bisita ordutegia luzatu du",
            "dendekin hitzarmena sinatu du", "garraioa hobetzeko plana proposatu du",
            "ehunka lagun bildu ditu", "publikoaren babesa eskertu du", "ate irekien eguna deitu du",
            "proiektuaren webgunea berritu du", "irakurketa plana bultzatu du",
            "plazako obrak azaldu ditu", "jaietako kartela aurkeztu du",
            "kultura aurrekontua defendatu du", "bazkide kanpaina abiatu du",
        ],
        "places": [
            "alde zaharrean", "plaza nagusian", "itsasadarraren ondoan", "kiroldegian",
            "erakusketa aretoan", "itsas pasealekuan", "San Andres auzoan", "udal auditorioan",
            "antzokiaren aurrean", "kultura etxean", "parke handian", "tren geltokian",
        ],
        "times": [
            "asteburu honetan", "martxoan zehar", "goizean goiz", "datorren ostegunean",
            "uda baino lehen", "atzoko bileraren ostean", "jaietan", "urte amaieran",
            "gaur arratsaldean bertan", "estreinaldiaren ondoren", "kanpaina betean",
            "joan den astelehenetik",
        ],
    },
}

# Forms the normalizer must know beyond the bank vocabulary (repetition
# collapse targets, hashtag segmentation pieces, OOV standard forms).
EXTRA_WORDFORMS = {
    "en": [
        "happy", "game", "of", "thrones", "a", "very", "long", "day", "forever", "great",
        "you", "thanks", "today", "tomorrow", "before", "in", "my", "opinion", "be", "right",
        "back", "by", "the", "way", "i", "do", "not", "know", "love", "good", "so", "cool",
        "see", "to", "night", "tonight", "people", "please", "really", "nice", "win", "won",
    ],
    "es": [
            "que", "porque", "también", "de", "buenísimo", "feliz", "gracias", "mañana", "adiós",
            "bueno", "buena", "buen", "genial", "fiesta", "mucho", "beso", "besos", "hasta",
            "luego", "fin", "semana", "para", "por", "favor", "verdad", "jugar", "ganar",
    ],
    "fr": [
        "beaucoup", "pourquoi", "salut", "quelqu'un", "bonjour", "merci", "demain", "super",
        "bien", "bon", "bonne", "fête", "week-end", "je", "ne", "sais", "pas", "très", "content",
    ],
    "eu": [
        "zorionak", "eskerrik", "asko", "bihar", "gaur", "agur", "ondo", "oso", "polita",
        "ederra", "egun", "on", "gau", "gabon", "aupa", "maite", "zaitut", "barkatu", "mesedez",
    ],
}


def compose(rng: random.Random, bank: dict[str, list[str]]) -> str:
    parts = []
    if rng.random() < 0.3:
        parts.append(rng.choice(bank["openers"]))
    parts.append(rng.choice(bank["subjects"]))
    parts.append(rng.choice(bank["predicates"]))
    if rng.random() < 0.7:
        parts.append(rng.choice(bank["places"]))
    if rng.random() < 0.7:
        parts.append(rng.choice(bank["times"]))
    sentence = " ".join(parts)
    return sentence[0].upper() + sentence[1:] + "."


def generate(lang: str, bank: dict[str, list[str]]) -> tuple[list[str], list[str]]:
    rng = random.Random(f"{SEED}:{lang}")
    seen: set[str] = set()
    sentences: list[str] = []
    while len(sentences) < TRAIN_SENTENCES + HELDOUT_SENTENCES:
        s = compose(rng, bank)
        if s in seen:
            continue
        if len(sentences) >= TRAIN_SENTENCES and len(s) < HELDOUT_MIN_CHARS:
            continue  # held-out lines must be >= 40 chars
        seen.add(s)
        sentences.append(s)
    return sentences[:TRAIN_SENTENCES], sentences[TRAIN_SENTENCES:]


def bank_vocabulary(bank: dict[str, list[str]]) -> set[str]:
    vocab: set[str] = set()
    for phrases in bank.values():
        for phrase in phrases:
            for raw in phrase.replace("'", " ").split():
                word = raw.strip(",.").lower()
                if word and all(unicodedata.category(c).startswith("L") or c == "-" for c in word):
                    vocab.add(word)
    return vocab


def main() -> None:
    langid_dir = ROOT / "src/mediawatch/resources/langid"
    profile_dir = langid_dir / "profiles"
    profile_dir.mkdir(parents=True, exist_ok=True)

    for lang, bank in BANKS.items():
        train, heldout = generate(lang, bank)
        (langid_dir / f"{lang}.train.txt").write_text("\n".join(train) + "\n", encoding="utf-8")
        (langid_dir / f"{lang}.heldout.txt").write_text("\n".join(heldout) + "\n", encoding="utf-8")
        profile = build_profile("\n".join(train), lang)
        save_profile(profile, profile_dir / f"{lang}.profile")
        print(f"{lang}: {len(train)} train / {len(heldout)} heldout, profile size {profile.size}")

        norm_dir = ROOT / "src/mediawatch/resources/normalize" / lang
        norm_dir.mkdir(parents=True, exist_ok=True)
        forms = bank_vocabulary(bank) | set(EXTRA_WORDFORMS.get(lang, []))
        # Single-word OOV standard forms must be known wordforms.
        oov_path = norm_dir / "oov.tsv"
        if oov_path.exists():
            for line in oov_path.read_text(encoding="utf-8").splitlines():
                if line.strip() and not line.startswith("#"):
                    value = line.split("\t")[1]
                    if " " not in value:
                        forms.add(value.lower())
        wordforms = sorted(forms)
        (norm_dir / "wordforms.txt").write_text("\n".join(wordforms) + "\n", encoding="utf-8")
        print(f"{lang}: {len(wordforms)} wordforms")

    # Manifest: entry counts for every normalize resource actually shipped.
    manifest: dict[str, dict[str, int]] = {}
    norm_root = ROOT / "src/mediawatch/resources/normalize"
    for lang_dir in sorted(p for p in norm_root.iterdir() if p.is_dir()):
        counts = {}
        for name in ("wordforms.txt", "oov.tsv", "stopwords.txt", "interjections.txt"):
            path = lang_dir / name
            if path.exists():
                counts[name] = sum(
                    1
                    for line in path.read_text(encoding="utf-8").splitlines()
                    if line.strip() and not line.startswith("#")
                )
        manifest[lang_dir.name] = counts
    emoticons = norm_root / "emoticons.tsv"
    if emoticons.exists():
        manifest["emoticons"] = {
            "emoticons.tsv": sum(
                1
                for line in emoticons.read_text(encoding="utf-8").splitlines()
                if line.strip() and not line.startswith("#")
            )
        }
    (norm_root / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    print("manifest written")


if __name__ == "__main__":
    main()
